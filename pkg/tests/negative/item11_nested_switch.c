int main(void)
{
    int a, b, r;
    a = 1;
    b = 2;
    r = 0;
    switch (a) {
    case 1:
        switch (b) {
        case 2:
            r = 5;
            break;
        default:
            r = 6;
        }
        break;
    default:
        r = 7;
    }
    return r;
}
