int main(void)
{
    short s;
    s = 32767;
    s = s + 1;
    return s < 0;
}
