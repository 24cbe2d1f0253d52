int sq(int x)
{
    return x * x;
}

int main(void)
{
    int y;
    y = sq(7);
    return y;
}
