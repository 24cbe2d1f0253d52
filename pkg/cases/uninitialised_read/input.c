int main(void)
{
    int x;
    int y;
    y = x + 1;
    return y;
}
