int main(void)
{
    int x, y;
    x = 9;
    switch (x) {
    case 1:
        y = 1;
        break;
    default:
        y = 5;
    }
    return y;
}
