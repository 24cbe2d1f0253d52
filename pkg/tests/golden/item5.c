int main(void)
{
    unsigned char ll_i, tmp;
    ll_i = 3;
    tmp = 0;
    while (ll_i != tmp) {
        tmp = tmp + 1;
    }
    return tmp;
}
