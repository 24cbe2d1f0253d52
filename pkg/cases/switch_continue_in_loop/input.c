int main(void)
{
    int i, s;
    s = 0;
    for (i = 0; i < 5; i++) {
        switch (i % 3) {
        case 0:
            continue;
        case 1:
            s = s + 10;
            break;
        default:
            s = s + 1;
        }
        s = s + 100;
    }
    return s & 255;
}
