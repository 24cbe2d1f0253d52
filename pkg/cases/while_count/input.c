int main(void)
{
    int i, s;
    i = 0;
    s = 0;
    while (i < 5) {
        s = s + i;
        i++;
    }
    return s;
}
