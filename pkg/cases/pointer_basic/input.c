int main(void)
{
    int x;
    int *p;
    x = 1;
    p = &x;
    *p = 5;
    return x;
}
