extern void print_int(int v);

int main(void)
{
    int x;
    x = 6;
    print_int(5);
    print_int(x * 2);
    return 0;
}
