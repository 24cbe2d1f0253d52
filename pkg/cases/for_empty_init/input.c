int main(void)
{
    int i, s;
    i = 2;
    s = 0;
    for (; i < 5; i++) {
        s = s + 1;
    }
    return s;
}
