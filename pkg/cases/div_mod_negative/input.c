int main(void)
{
    int a, b;
    a = (-7) / 2;
    b = (-7) % 2;
    return a + b + 10;
}
