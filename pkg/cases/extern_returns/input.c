extern int read_int(void);

int main(void)
{
    int a, b, c;
    a = read_int();
    b = read_int();
    c = read_int();
    return a + b + c;
}
