extern int scale(int v);
extern void print_int(int v);

int main(void)
{
    int a;
    a = scale(7);
    a = a + scale(a);
    print_int(a);
    return a;
}
