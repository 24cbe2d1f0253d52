int main(void)
{
    int i;
    i = 0;
    return i;
}
