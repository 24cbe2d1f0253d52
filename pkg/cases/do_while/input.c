int main(void)
{
    int i, s, k;
    i = 0;
    s = 0;
    do {
        s = s + i;
        i++;
    } while (i < 4);
    k = 0;
    do {
        k = k + 1;
    } while (0);
    return s + k;
}
