char s[6] = {'h', 'e', 'l', 'l', 'o', 0};

int main(void)
{
    int n;
    n = 0;
    while (s[n] != 0)
        n++;
    return n;
}
