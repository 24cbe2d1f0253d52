int last;
int main(void)
{
    int i;
    last = 9;
    for (i = 0; i <= last; i++) {
        if (i == 4) {
            break;
        }
    }
    return i;
}
