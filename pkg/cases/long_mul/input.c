int main(void)
{
    long l;
    l = 100000;
    l = l * 3;
    return l == 300000;
}
