int main(void)
{
    char c;
    unsigned char u;
    c = 127;
    c++;
    u = 255;
    u = u + 1;
    return u;
}
