int main(void)
{
    int a[3];
    int *p;
    int *q;
    int e, n;
    p = &a[1];
    q = a + 1;
    e = p == q;
    n = p != 0;
    return e + n;
}
