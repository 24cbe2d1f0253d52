int g;

void inc(int d)
{
    g = g + d;
}

int main(void)
{
    g = 0;
    inc(3);
    inc(4);
    return g;
}
