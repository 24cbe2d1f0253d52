extern void tick(void);

int main(void)
{
    int x;
    tick();
    x = 1;
    tick();
    return x;
}
