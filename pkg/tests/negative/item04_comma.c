int main(void)
{
    int x, y;
    y = 1;
    x = (y, 2);
    return x;
}
