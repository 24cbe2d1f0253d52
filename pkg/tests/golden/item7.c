int main(void)
{
    int n;
    n = 0;
    while (1) {
        n++;
        break;
    }
    return n;
}
