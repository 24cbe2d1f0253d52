int main(void)
{
    int x, y;
    y = 3;
    if ((x = y) > 2)
        return 1;
    return 0;
}
