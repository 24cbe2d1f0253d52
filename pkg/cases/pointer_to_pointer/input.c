int main(void)
{
    int x;
    int *p;
    int **pp;
    p = &x;
    pp = &p;
    **pp = 3;
    return x;
}
