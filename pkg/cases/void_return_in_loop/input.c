int a[6] = {0};

void fill(int n)
{
    int i;
    for (i = 0; i < 6; i++) {
        if (i == n)
            return;
        a[i] = i + 1;
    }
}

int main(void)
{
    fill(3);
    return a[0] + a[1] + a[2] + a[3];
}
