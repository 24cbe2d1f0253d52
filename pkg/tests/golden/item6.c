int main(void)
{
    int j, k;
    j = 0;
    if (j == 0) {
        k = 1;
    } else {
        k = 2;
    }
    return k;
}
