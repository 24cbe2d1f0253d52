int main(void)
{
    int x, y;
    x = 2;
    switch (x) {
    case 1:
        y = 10;
        break;
    case 2:
        y = 20;
        break;
    default:
        y = 30;
    }
    return y;
}
