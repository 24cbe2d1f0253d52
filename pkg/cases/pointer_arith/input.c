int main(void)
{
    int a[5];
    int *p;
    int *q;
    int i, d;
    for (i = 0; i < 5; i++)
        a[i] = i;
    p = a;
    p = p + 2;
    *p = 9;
    q = &a[4];
    d = q - p;
    return d;
}
