void g(int a)
{
    a = 100;
}

int main(void)
{
    int x;
    x = 3;
    g(x);
    return x;
}
