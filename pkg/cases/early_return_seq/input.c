int main(void)
{
    int x;
    x = 1;
    if (x == 1)
        return 5;
    x = 2;
    return x;
}
