int m[2][3] = {{1, 2, 3}, {4, 5, 6}};

int main(void)
{
    int i, j, s;
    s = 0;
    for (i = 0; i < 2; i++)
        for (j = 0; j < 3; j++)
            s = s + m[i][j];
    return s;
}
