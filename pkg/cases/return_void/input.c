int g;

void f(void)
{
    g = 1;
    return;
    g = 2;
}

int main(void)
{
    g = 0;
    f();
    return g;
}
