int main(void)
{
    double x;
    x = 1.5;
    x = x * 2.0 + 0.25;
    return (int) x;
}
