extern void print_int(int v);

int main(void)
{
    int i;
    i = 0;
    while (1) {
        print_int(i);
        i++;
    }
    return 0;
}
