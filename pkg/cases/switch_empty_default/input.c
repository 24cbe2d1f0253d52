int main(void)
{
    int x, y;
    x = 9;
    y = 0;
    switch (x) {
    case 1:
        y = 1;
        break;
    case 2:
        y = 2;
        break;
    default:
        ;
    }
    return y;
}
