int f(void)
{
    int i, j;
    for (i = 0; i < 5; i++) {
        for (j = 0; j < 5; j++) {
            if (i * j == 6)
                return i * 10 + j;
        }
    }
    return -1;
}

int main(void)
{
    return f();
}
