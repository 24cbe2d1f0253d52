int main(void)
{
    char c;
    int y;
    c = 'b';
    switch (c) {
    case 'a':
        y = 1;
        break;
    case 'b':
        y = 2;
        break;
    default:
        y = 3;
    }
    return y;
}
