int main(void)
{
    double d;
    int i;
    char c;
    d = 3.75;
    i = (int) d;
    c = (char) 300;
    d = (double) i / 2.0;
    return i + (int) c;
}
