int main(void)
{
    int zPend, r;
    zPend = 5;
    r = 0;
    switch (zPend % 2) {
    case 0:
        r = 10;
    case 1:
        r = r + 1;
    default:
        ;
    }
    return r;
}
