int main(void)
{
    int i, s;
    s = 0;
    for (i = 3; i < 6; i++)
        s = s + i;
    return s;
}
