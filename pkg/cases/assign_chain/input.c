int main(void)
{
    int a, b, c;
    a = 2;
    b = a * 3;
    c = b - a;
    return c;
}
