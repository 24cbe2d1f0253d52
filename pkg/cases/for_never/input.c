int main(void)
{
    int i, s;
    s = 0;
    for (i = 10; i < 5; i++)
        s = 99;
    return s;
}
