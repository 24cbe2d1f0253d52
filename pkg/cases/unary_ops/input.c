int main(void)
{
    int x, y, z;
    x = -5;
    y = ~x;
    z = +x;
    return y - z;
}
