int main(void)
{
    int x, y;
    x = 3;
    y = 0;
    switch (x) {
    case 1:
        y = 100;
        break;
    case 3:
        y = y + 5;
    default:
        y = y * 2;
    }
    return y;
}
