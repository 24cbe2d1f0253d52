int main(void)
{
    unsigned char yy[256];
    yy[0] = 1;
    return 0;
}
