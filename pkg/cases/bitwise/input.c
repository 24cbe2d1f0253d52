int main(void)
{
    int x, y, z, w, v;
    x = 240 & 60;
    y = 240 | 15;
    z = 255 ^ 15;
    w = 1 << 4;
    v = (-16) >> 2;
    return x + w;
}
