void swap(int *a, int *b)
{
    int t;
    t = *a;
    *a = *b;
    *b = t;
}

int main(void)
{
    int x, y;
    x = 1;
    y = 2;
    swap(&x, &y);
    return x * 10 + y;
}
