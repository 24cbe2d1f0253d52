int main(void)
{
    int i, j, c;
    c = 0;
    for (i = 0; i < 3; i++) {
        for (j = 0; j < 4; j++) {
            c++;
        }
    }
    return c;
}
