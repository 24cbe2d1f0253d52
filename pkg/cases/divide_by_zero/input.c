int main(void)
{
    int a, b;
    a = 1;
    b = 0;
    return a / b;
}
