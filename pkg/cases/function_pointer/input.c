int dbl(int x)
{
    return 2 * x;
}

int inc(int x)
{
    return x + 1;
}

int main(void)
{
    int (*fp)(int);
    int r;
    fp = dbl;
    r = fp(4);
    fp = inc;
    r = r + (*fp)(r);
    return r;
}
