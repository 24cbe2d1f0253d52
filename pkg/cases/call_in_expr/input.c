int add(int a, int b)
{
    return a + b;
}

int main(void)
{
    int r;
    r = add(2, 3) * add(1, 1);
    return r;
}
