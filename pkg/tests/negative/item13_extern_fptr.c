extern int read_int(void);

int main(void)
{
    int (*fp)(void);
    fp = read_int;
    return fp();
}
