int main(void)
{
    int x, y;
    x = 1;
    y = 0;
    switch (x) {
    case 1:
        y = y + 1;
    case 2:
        y = y + 2;
    default:
        y = y + 4;
    }
    return y;
}
