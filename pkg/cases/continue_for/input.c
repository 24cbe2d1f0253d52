int main(void)
{
    int s, i;
    s = 0;
    for (i = 0; i < 10; i++) {
        if (i % 2 == 0)
            continue;
        s = s + i;
    }
    return s;
}
