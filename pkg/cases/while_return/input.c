int find(int k)
{
    int i;
    i = 0;
    while (i < 100) {
        if (i * i >= k)
            return i;
        i++;
    }
    return -1;
}

int main(void)
{
    int r;
    r = find(50);
    return r;
}
