int main(void)
{
    int x, y, z;
    z = 3;
    x = y = z;
    return x;
}
