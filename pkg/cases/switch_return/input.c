int cls(int v)
{
    switch (v) {
    case 0:
        return 100;
    case 1:
        return 200;
    default:
        return 300;
    }
}

int main(void)
{
    int r;
    r = cls(0) + cls(1) + cls(5);
    return r & 255;
}
