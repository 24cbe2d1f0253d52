int main(void)
{
    int a, b, m, n;
    a = 4;
    b = 9;
    m = a > b ? a : b;
    n = a < b ? a : b;
    return m - n;
}
