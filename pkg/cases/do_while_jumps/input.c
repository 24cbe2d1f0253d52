int main(void)
{
    int i, s;
    i = 0;
    s = 0;
    do {
        i++;
        if (i == 2)
            continue;
        if (i == 5)
            break;
        s = s + i;
    } while (i < 10);
    return s;
}
