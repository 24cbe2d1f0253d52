int main(void)
{
    int x, y, z;
    x = 3;
    if (x > 2) {
        y = 1;
    } else {
        y = 2;
    }
    if (x < 2) {
        z = 1;
    } else {
        z = 2;
    }
    return y + z;
}
