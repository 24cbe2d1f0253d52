int a[2];

int main(void)
{
    a[5] = 1;
    return 0;
}
