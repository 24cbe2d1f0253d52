int main(void)
{
    int x, y;
    x = 5;
    x++;
    x++;
    y = 10;
    y--;
    return x + y;
}
