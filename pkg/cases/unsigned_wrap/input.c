int main(void)
{
    unsigned int u;
    u = 0;
    u--;
    return (int) (u >> 24);
}
