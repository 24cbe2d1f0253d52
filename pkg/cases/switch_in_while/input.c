int main(void)
{
    int i, s;
    i = 0;
    s = 0;
    while (i < 3) {
        switch (i) {
        case 1:
            s = s + 10;
            break;
        default:
            s = s + 1;
        }
        i++;
    }
    return s;
}
