int main(void)
{
    const int x = 4;
    return x;
}
