int main(void)
{
    int m[3][4];
    int i, j, s;
    for (i = 0; i < 3; i++) {
        for (j = 0; j < 4; j++) {
            m[i][j] = i * 4 + j;
        }
    }
    s = m[2][3] + m[1][0];
    return s;
}
