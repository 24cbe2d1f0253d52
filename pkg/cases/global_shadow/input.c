int x = 5;

int f(void)
{
    int x;
    x = 10;
    return x;
}

int main(void)
{
    int r;
    r = f() + x;
    return r;
}
