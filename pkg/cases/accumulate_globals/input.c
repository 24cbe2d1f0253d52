int total;
int calls;

int step(int v)
{
    return v * 2;
}

void record(int v)
{
    total = total + step(v);
    calls++;
}

int main(void)
{
    int i;
    total = 0;
    calls = 0;
    for (i = 1; i <= 4; i++)
        record(i);
    return total + calls;
}
