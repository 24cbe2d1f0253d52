int main(void)
{
    int a, b, c;
    a = (3 > 2) && (2 > 1);
    b = (1 > 2) || (0 != 0);
    c = !a;
    return a * 4 + b * 2 + c;
}
