int a[4] = {3, 5, 7, 9};

int main(void)
{
    int *p;
    int s, i;
    s = 0;
    p = a;
    for (i = 0; i < 4; i++) {
        s = s + *p;
        p++;
    }
    return s;
}
