int main(void)
{
    int i, j, c;
    c = 0;
    for (i = 0; i < 3; i++) {
        for (j = 0; j < 10; j++) {
            if (j == 2)
                break;
            c++;
        }
    }
    return c;
}
