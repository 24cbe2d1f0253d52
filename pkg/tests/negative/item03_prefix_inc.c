int main(void)
{
    int x;
    x = 0;
    ++x;
    return x;
}
