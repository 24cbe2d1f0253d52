int main(void)
{
    int x;
    x = 0;
again:
    x++;
    if (x < 3)
        goto again;
    return x;
}
