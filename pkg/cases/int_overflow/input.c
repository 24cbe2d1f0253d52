int main(void)
{
    int x;
    x = 2147483647;
    x = x + 1;
    return x < 0;
}
